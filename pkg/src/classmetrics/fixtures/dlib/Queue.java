package dlib;

import java.util.*;

public class Queue extends BaseObject
{
    private Vector items;

    public Queue ()
    {
        items = new Vector();
    }

    public void enqueue (Object item)
    {
        items.addElement(item);
    }

    public Object dequeue ()
    {
        if (items.isEmpty())
        {
            return( null );
        }
        Object first = items.firstElement();
        items.removeElementAt(0);
        return( first );
    }

    public boolean empty ()
    {
        return( items.isEmpty() );
    }

    public int length ()
    {
        return( items.size() );
    }
}
